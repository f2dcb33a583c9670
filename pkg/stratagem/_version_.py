"""# stratagem.version

Package metadata; `setup.py` reads the string values from this file.
"""

__title__ =         "stratagem"
__description__ =   "Total-order HTN planning with generated, sandboxed search heuristics."
__author__ =        "Gabriel C. Trahan"
__author_email__ =  "gabrieltrahan777@hotmail.com"
__version__ =       "0.1.0"
__version_info__ =  tuple(int(i) for i in __version__.split("."))
