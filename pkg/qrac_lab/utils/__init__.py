from .config import retrieve_value_from_config, load_config, setting, tolerance
from .logging import get_logger
from .ios import parse_file, write_file, dump_json, dump_csv
from .parallel import sweep, thread_count
from .ResultEncoder import ResultEncoder

__all__ = [
    retrieve_value_from_config,
    load_config,
    setting,
    tolerance,
    get_logger,
    parse_file,
    write_file,
    dump_json,
    dump_csv,
    sweep,
    thread_count,
    ResultEncoder
]
