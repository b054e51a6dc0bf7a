import logging
import sys

import config
from framework.cli import main as cli_main
from utils import setup_logging

logger = logging.getLogger("strategic-lab")


def run() -> None:
    """Console entry point."""
    for directory in [config.OUTPUT_DIR, config.LOG_DIR]:
        directory.mkdir(parents=True, exist_ok=True)

    setup_logging(config.ENCODING, config.LOG_LEVEL, config.LOG_DIR)
    code = cli_main(sys.argv[1:])
    logger.debug("Exiting with code %d", code)
    sys.exit(code)


if __name__ == "__main__":
    run()
