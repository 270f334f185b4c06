#! /usr/bin/env python

__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Command-line front end for UCluster.

    ucluster solve    --variant <v> --k <k> [--method m] [--minimize] <instance>
    ucluster kernel   --variant <v> --k <k> [--out f] [--stats f] <instance>
    ucluster oracle   --variant <v> --k <k> [--out f] <instance>
    ucluster gen      <cliques> <size> [--add n] [--del n] [--seed s]
    ucluster verify   <instance> <witness> [--k k]
    ucluster bench    --variant <v> --k <k> <directory>
    ucluster variants
"""

import sys

from UCluster.utils.commands import main

if __name__ == "__main__":
    sys.exit(main())
