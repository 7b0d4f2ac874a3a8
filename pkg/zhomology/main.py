#!/usr/bin/env python3
"""
zhomology command line entry point.
Run `zhomology --help` for the list of subcommands.
"""

import sys
# check min. python version
if sys.version_info < (3, 7):
    sys.exit("zhomology requires Python version >= 3.7")

# flake8: noqa E402
import logging
from argparse import Namespace
from typing import Any, List

from zhomology import DomainError, OperationalException
from zhomology.configuration import Arguments


logger = logging.getLogger('zhomology')


def main(sysargv: List[str] = None) -> None:
    """
    Parse the command line and run the selected subcommand.
    Exit status 0 on success, 1 on domain errors and 2 on usage errors.
    :return: None
    """

    return_code: Any = 1
    try:
        arguments = Arguments(
            sysargv,
            'Integer persistent homology and spectral sequences of filtered complexes'
        )
        args: Namespace = arguments.get_parsed_arg()

        args.func(args)
        return_code = 0

    except SystemExit as e:
        return_code = e.code
    except KeyboardInterrupt:
        logger.info('SIGINT received, aborting ...')
        return_code = 0
    except OperationalException as e:
        logger.error(str(e))
        return_code = 2
    except DomainError as e:
        logger.error(str(e))
        print(f'error: {e}', file=sys.stderr)
        return_code = 1
    except Exception:
        logger.exception('Fatal exception!')
    finally:
        sys.exit(return_code)


if __name__ == '__main__':
    main()
