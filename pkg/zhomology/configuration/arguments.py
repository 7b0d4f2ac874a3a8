"""
This module contains the argument manager class
"""
import argparse
from typing import List, Optional

from zhomology.configuration.cli_options import AVAILABLE_CLI_OPTIONS

ARGS_COMMON = ["verbosity", "logfile", "version", "config"]

ARGS_OUTPUT = ["filtration_start", "output_format", "show_generators"]

ARGS_SPSQ = ["complex_file", "level", "p", "q"] + ARGS_OUTPUT

ARGS_PERSISTENCE = ARGS_OUTPUT + ["field", "use_oracle"]

ARGS_BD = ["complex_file", "stage_i", "stage_k", "degree"] + ARGS_PERSISTENCE

ARGS_TOTAL = ["complex_file", "stage_i", "stage_j", "degree"] + ARGS_PERSISTENCE

ARGS_TRIPLE = ["complex_file", "stage_i", "stage_j", "stage_k", "degree"] + ARGS_PERSISTENCE

ARGS_STAGE_HOMOLOGY = ["complex_file", "stage_j", "degree"] + ARGS_PERSISTENCE

ARGS_BARCODE = ["complex_file", "filtration_start", "output_format", "field",
                "barcode_mode", "barcode_svg", "barcode_degrees"]

ARGS_CHECK_INEQUALITY = ["complex_file", "level", "degree", "filtration_start", "output_format"]

ARGS_VERIFY_EQUIVALENCE = ["equivalence_file", "output_format"]


class Arguments(object):
    """
    Arguments Class. Manage the arguments received by the cli
    """
    def __init__(self, args: Optional[List[str]], description: str) -> None:
        self.args = args
        self._parsed_arg: Optional[argparse.Namespace] = None
        self.parser = argparse.ArgumentParser(description=description)

    def _load_args(self) -> None:
        self._build_args(optionlist=ARGS_COMMON)
        self._build_subcommands()

    def get_parsed_arg(self) -> argparse.Namespace:
        """
        Return the list of arguments
        :return: List[str] List of arguments
        """
        if self._parsed_arg is None:
            self._load_args()
            self._parsed_arg = self.parser.parse_args(self.args)

        return self._parsed_arg

    def _build_args(self, optionlist, parser=None):
        parser = parser or self.parser

        for val in optionlist:
            opt = AVAILABLE_CLI_OPTIONS[val]
            if opt.positional:
                parser.add_argument(val, **opt.kwargs)
            else:
                parser.add_argument(*opt.cli, dest=val, **opt.kwargs)

    def _build_subcommands(self) -> None:
        """
        Builds and attaches all subcommands.
        :return: None
        """
        from zhomology.utils import (start_barcode, start_check_inequality,
                                     start_prst_hmlg_group, start_spsq_dffr, start_spsq_group,
                                     start_stage_hmlg_group, start_total_prst_hmlg_group,
                                     start_triple_prst_hmlg_group, start_verify_equivalence)

        subparsers = self.parser.add_subparsers(dest='subparser')
        subparsers.required = True

        commands = [
            ('spsq-group', 'Spectral sequence group E^r_{p,q}.', start_spsq_group, ARGS_SPSQ),
            ('spsq-dffr', 'Spectral sequence differential d^r_{p,q}.', start_spsq_dffr,
             ARGS_SPSQ),
            ('prst-hmlg-group', 'Persistent homology group BD^{i,k}_n.',
             start_prst_hmlg_group, ARGS_BD),
            ('total-prst-hmlg-group', 'Persistent homology group H^{i,j}_n.',
             start_total_prst_hmlg_group, ARGS_TOTAL),
            ('triple-prst-hmlg-group', 'Double filtration group H^{i,j,k}_n.',
             start_triple_prst_hmlg_group, ARGS_TRIPLE),
            ('stage-hmlg-group', 'Homology H_n of the filtration stage j.',
             start_stage_hmlg_group, ARGS_STAGE_HOMOLOGY),
            ('barcode', 'Integer barcode diagram as text, optionally SVG.', start_barcode,
             ARGS_BARCODE),
            ('check-inequality', 'Compare page ranks with long-bar counts.',
             start_check_inequality, ARGS_CHECK_INEQUALITY),
            ('verify-equivalence', 'Verify an equivalence and compare its pages.',
             start_verify_equivalence, ARGS_VERIFY_EQUIVALENCE),
        ]
        for name, help_text, func, optionlist in commands:
            cmd = subparsers.add_parser(name, help=help_text)
            cmd.set_defaults(func=func)
            self._build_args(optionlist=optionlist, parser=cmd)
