"""Instance generators, the named graph corpus and the command-line
sub-commands."""
