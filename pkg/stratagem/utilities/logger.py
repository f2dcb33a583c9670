"""# stratagem.utilities.logger

Package logging: one `stratagem` logger with a console handler on standard error and a rotating
file handler. Standard output carries only command results (stats lines, plans, dumps, report
paths).
"""

__all__ =   [
                "get_child",
                "get_logger",
                "ProgressHandler"
            ]

from logging                import getLogger, Formatter, Handler, Logger, LogRecord
from logging.handlers       import RotatingFileHandler
from os                     import makedirs
import sys

from tqdm                   import tqdm

# Package logger.
LOGGER: Logger =    getLogger("stratagem")

class ProgressHandler(Handler):
    """# Progress-Aware Console Handler.

    Writes records through `tqdm.write` so that a line logged while a progress bar is drawn
    (candidate requests, selection, the benchmark matrix) lands above the bar.
    """

    def emit(self,
        record: LogRecord
    ) -> None:
        """# Emit Record to Standard Error."""
        try:# Write above any active bar.
            tqdm.write(self.format(record), file = sys.stderr)

        except Exception: self.handleError(record)

def get_logger(
    logger_name:    str,
    logging_level:  str =   "INFO",
    logging_path:   str =   "logs"
) -> Logger:
    """# Initialize Logger.

    (Re)configure the package logger. Handlers of a previous initialization are replaced, so the
    command line can be driven repeatedly within one process.

    ## Args:
        * logger_name   (str):              Log file name (without extension).
        * logging_level (str, optional):    Minimum logging level (DEBUG < INFO < WARNING < ERROR <
                                            CRITICAL). Defaults to "INFO".
        * logging_path  (str, optional):    Directory in which the log file is written. Defaults to
                                            "logs".

    ## Returns:
        * Logger:   Package logger.
    """
    makedirs(name = logging_path, exist_ok = True)

    LOGGER.setLevel(level = logging_level)

    # Replace handlers.
    for handler in list(LOGGER.handlers):
        LOGGER.removeHandler(handler)
        handler.close()

    # Console.
    console_handler:    ProgressHandler =       ProgressHandler()
    console_handler.setFormatter(Formatter("%(levelname)s | %(name)s | %(message)s"))

    # File, rotated at 1 MiB with ten backups.
    file_handler:       RotatingFileHandler =   RotatingFileHandler(
                                                    filename =      f"{logging_path}/{logger_name}.log",
                                                    maxBytes =      1048576,
                                                    backupCount =   10
                                                )
    file_handler.setFormatter(Formatter("%(asctime)s | %(levelname)s | %(process)d | %(name)s | %(message)s"))

    LOGGER.addHandler(hdlr = console_handler)
    LOGGER.addHandler(hdlr = file_handler)

    return LOGGER

def get_child(
    logger_name:    str
) -> Logger:
    """# Child Logger of the Package Logger.

    ## Args:
        * logger_name   (str):  Dotted suffix (e.g. "search", "entry.tdg").

    ## Returns:
        * Logger:   `stratagem.<logger_name>`.
    """
    return LOGGER.getChild(logger_name)
