"""
Command-line entry point for fuzzy-spectra.
"""

import sys
from typing import List, Optional

from src.app import init_app
from src.commands import build_parser
from src.utils import BaseAppException, exit_code_for, get_logger

logger = get_logger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse the command line, run the subcommand and map failures to exit codes:
    0 success, 2 usage or configuration, 3 numerical or sampling failure,
    4 model-domain error, 1 anything else.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        init_app(args.log_level)
        return args.handler(args)
    except BaseAppException as e:
        logger.error(f"Application error: {str(e)}")
        print(f"error: {e.message} [{e.code.name}]", file=sys.stderr)
        return exit_code_for(e)
    except Exception as e:
        logger.error(f"Unhandled exception: {str(e)}", exc_info=True)
        print(f"error: {str(e)}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
