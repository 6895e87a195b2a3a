import configparser
import os
from importlib import resources
from typing import Type, Union

ENV_QRAC_LAB_CONFIG = "QRAC_LAB_CONFIG"

_config = None


def load_config(reload: bool = False) -> configparser.ConfigParser:
    """Loads the packaged default config and, if the environment variable
    QRAC_LAB_CONFIG names a file, overlays it on top.

    :param reload: drop the cached config and read the files again
    :return: the merged config
    """
    global _config
    if _config is not None and not reload:
        return _config

    config = configparser.ConfigParser()
    config.read_string(
        resources.files("qrac_lab").joinpath("default_config.ini").read_text()
    )
    user_file = os.getenv(ENV_QRAC_LAB_CONFIG)
    if user_file:
        config.read(user_file)
    _config = config
    return config


def retrieve_value_from_config(
        config: configparser.ConfigParser,
        super_field: str,
        sub_field: str,
        d_type: Type,
        field_name: str,
        parameter: Union[str, int, float] = None
    ) -> Union[str, int, float]:
    """Checks if the parameter is None and if so tries to load a default value
    from the config. If a parameter is supplied, then the parameter value
    is preferred over the config.

    :param config: config that stores the defaults
    :param super_field: section within the config
    :param sub_field: key within the section
    :param d_type: data type of the stored field in the config
    :param field_name: human readable name of the field, used in the error
    :param parameter: explicit value which overrides the config value,
        defaults to None
    :raises RuntimeError: parameter is None and the config has no value
    :return: parameter value or config value
    """
    if parameter is not None:
        return parameter
    if super_field in config and sub_field in config[super_field]:
        return d_type(config[super_field][sub_field])
    else:
        raise RuntimeError(f"No {field_name} specified")


def setting(
        super_field: str,
        sub_field: str,
        d_type: Type,
        parameter: Union[str, int, float] = None
    ) -> Union[str, int, float]:
    """Shorthand for retrieve_value_from_config on the loaded config"""
    return retrieve_value_from_config(
        load_config(),
        super_field,
        sub_field,
        d_type,
        f"{super_field}.{sub_field}",
        parameter
    )


def tolerance(atol: float = None) -> float:
    return setting("numerics", "tolerance", float, atol)
