import logging
import sys
import os

log = logging.getLogger("deltashell")

_debug = "deltashell-debug" in sys.argv
log.setLevel(logging.DEBUG if _debug else logging.INFO)

_formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

os.makedirs("./logs", exist_ok=True)
_log_file = logging.FileHandler("./logs/deltashell.log", "w")
_log_file.setLevel(logging.DEBUG if _debug else logging.INFO)
_log_file.setFormatter(_formatter)
log.addHandler(_log_file)

# stderr, stdout carries the report
_log_console = logging.StreamHandler(sys.stderr)
_log_console.setLevel(logging.INFO)
_log_console.setFormatter(_formatter)
log.addHandler(_log_console)

# overflow and invalid value warnings from numpy and scipy go to the log file
logging.captureWarnings(True)
logging.getLogger("py.warnings").addHandler(_log_file)
