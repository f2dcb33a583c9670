"""# stratagem.setup

Stratagem setup utility. Package metadata is read from `stratagem/_version_.py`.
"""

from pathlib    import Path
from re         import findall, MULTILINE
from setuptools import find_packages, setup
from typing     import Dict

# Project root.
ROOT:   Path =  Path(__file__).parent

def get_metadata() -> Dict[str, str]:
    """# Get Package Metadata.

    Read the string-valued dunders (`__title__ = "..."`) of the version file without importing
    the package.

    ## Returns:
        * Dict[str, str]:   Dunder name (without underscores) mapped to its value.
    """
    return  dict(findall(
                r'^__(\w+)__\s*=\s*"(.*)"\s*$',
                (ROOT / "stratagem" / "_version_.py").read_text(encoding = "utf-8"),
                MULTILINE
            ))

# Metadata.
METADATA:   Dict[str, str] =    get_metadata()

# Set up package.
setup(
    name =                          METADATA["title"],
    version =                       METADATA["version"],
    author =                        METADATA["author"],
    author_email =                  METADATA["author_email"],
    description =                   METADATA["description"],
    long_description =              (ROOT / "README.md").read_text(encoding = "utf-8"),
    long_description_content_type = "text/markdown",
    license =                       "GNU GENERAL PUBLIC LICENSE Version 3, 29 June 2007",
    packages =                      find_packages(),
    package_data =                  {
                                        # Mini-suites and their manifests.
                                        "stratagem.benchmark":  ["suites/*/*.hddl", "suites/*/*.json"],
                                        # Reference heuristic programs.
                                        "stratagem.heuristics": ["programs/*.hel"],
                                        # Canned provider responses (mock provider).
                                        "stratagem.pipeline":   ["tests/fixtures/responses/*"],
                                    },
    python_requires =               ">=3.12",
    install_requires =              [
                                        "numpy",
                                        "pandas",
                                        "psutil",
                                        "pyparsing",
                                        "pytest",
                                        "requests",
                                        "termcolor",
                                        "tqdm"
                                    ],
    entry_points =                  {
                                        "console_scripts":  ["stratagem=stratagem.__main__:main"],
                                    },
    classifiers =                   [
                                        "Intended Audience :: Science/Research",
                                        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
                                        "Operating System :: POSIX",
                                        "Programming Language :: Python :: 3.12",
                                        "Topic :: Scientific/Engineering :: Artificial Intelligence",
                                    ],
)
