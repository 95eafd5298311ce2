from .misc import collect, parallel_map, save_json, load_json, dump_json_line
