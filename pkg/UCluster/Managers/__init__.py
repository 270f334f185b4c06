from UCluster.Managers._ConfigManager import Config, get_config, set_config
from UCluster.Managers._WorkerPool import WorkerPool, CancelToken, check_token
