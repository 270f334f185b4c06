from UCluster.Parsers._InstanceParser import (
    parse_instance, write_instance, read_instance, save_instance
)
from UCluster.Parsers._WitnessParser import (
    parse_witness, write_witness, read_witness, save_witness
)
