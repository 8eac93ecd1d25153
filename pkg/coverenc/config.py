import json
import logging
import os

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "config.json")
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def load_config(config_file_path=DEFAULT_CONFIG_PATH):
    """
    Load configuration data from a JSON file.

    Args:
        config_file_path (str): Path to the JSON config file.

    Returns:
        dict: Configuration data.
    """
    if not os.path.exists(config_file_path):
        raise FileNotFoundError(f"Config file not found: {config_file_path}")
    with open(config_file_path, 'r') as f:
        config_data = json.load(f)
    return config_data


def create_user_config_file(user_config_file_path):
    """
    Create a new user configuration file with default values. The user can edit this file to tune
    oracle limits, recursion thresholds and BVA policy.

    Args:
        user_config_file_path (str): Path to the new configuration file.

    Returns:
        None
    """
    default_config = load_config()

    directory = os.path.dirname(user_config_file_path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)

    with open(user_config_file_path, 'w') as f:
        json.dump(default_config, f, indent=4)


def get_setting(config_data, setting):
    """
    Look up a setting by dotted path, e.g. "intervals.recursion_base".

    Args:
        config_data (dict): Configuration data.
        setting (str): Dotted key.

    Returns:
        The value stored under the key.
    """
    value = config_data
    for part in setting.split("."):
        value = value[part]
    return value


def setup_logging(config_data=None):
    """
    Configure the root logger from the config's log level.

    Args:
        config_data (dict): Configuration data, the packaged defaults when None.
    """
    if config_data is None:
        config_data = load_config()
    level = config_data.get("log_level")
    log_level = logging.getLevelName(level) if level else logging.INFO
    logging.basicConfig(level=log_level, format=LOG_FORMAT)
