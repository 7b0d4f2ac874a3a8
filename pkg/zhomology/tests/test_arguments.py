# pragma pylint: disable=missing-docstring, C0103
import argparse

import pytest

from zhomology.configuration import Arguments
from zhomology.configuration.cli_options import check_field_arg, check_stage
from zhomology.constants import INFINITY
from zhomology.utils import start_barcode, start_stage_hmlg_group


def test_parse_args_none() -> None:
    arguments = Arguments([], '')
    with pytest.raises(SystemExit):
        arguments.get_parsed_arg()


def test_parse_args_defaults() -> None:
    args = Arguments(['barcode', 'triangle.fsc'], '').get_parsed_arg()
    assert args.config is None
    assert args.verbosity == 0
    assert args.logfile is None
    assert args.func is start_barcode
    assert args.filtration_start is None
    assert args.barcode_mode is None
    assert args.barcode_svg is None
    assert args.barcode_degrees is None
    assert args.field is None


def test_parse_args_config() -> None:
    args = Arguments(['-c', '/dev/null', '--config', 'other.json', 'spsq-group', 'a.fcc',
                      '1', '0', '0'], '').get_parsed_arg()
    assert args.config == ['/dev/null', 'other.json']


def test_parse_args_verbose() -> None:
    args = Arguments(['-vvv', '--logfile', 'zh.log', 'check-inequality', 'a.fsc', '2', '1'],
                     '').get_parsed_arg()
    assert args.verbosity == 3
    assert args.logfile == 'zh.log'
    assert args.level == 2
    assert args.degree == 1


def test_parse_args_version() -> None:
    with pytest.raises(SystemExit, match=r'0'):
        Arguments(['--version'], '').get_parsed_arg()


def test_parse_args_invalid_subcommand() -> None:
    with pytest.raises(SystemExit, match=r'2'):
        Arguments(['plot-complex', 'a.fsc'], '').get_parsed_arg()


def test_parse_persistence_options() -> None:
    args = Arguments(['triple-prst-hmlg-group', 'a.fcc', '1', '2', 'inf', '0', '--start', '0',
                      '--format', 'tsv', '--generators', '--oracle'], '').get_parsed_arg()
    assert (args.stage_i, args.stage_j, args.stage_k, args.degree) == (1, 2, INFINITY, 0)
    assert args.filtration_start == 0
    assert args.output_format == 'tsv'
    assert args.show_generators is True
    assert args.use_oracle is True


def test_parse_stage_homology() -> None:
    args = Arguments(['stage-hmlg-group', 'a.fsc', '4', '1', '--field', 'Q'],
                     '').get_parsed_arg()
    assert args.func is start_stage_hmlg_group
    assert args.stage_j == 4
    assert args.field == 'Q'


def test_parse_args_rejects_bad_choices() -> None:
    with pytest.raises(SystemExit, match=r'2'):
        Arguments(['barcode', 'a.fsc', '--start', '2'], '').get_parsed_arg()
    with pytest.raises(SystemExit, match=r'2'):
        Arguments(['barcode', 'a.fsc', '--mode', 'diagonal'], '').get_parsed_arg()
    with pytest.raises(SystemExit, match=r'2'):
        Arguments(['spsq-group', 'a.fsc', '1', '0', '0', '--field', '2'], '').get_parsed_arg()


def test_verify_equivalence_args() -> None:
    args = Arguments(['verify-equivalence', 'x.equiv', '--format', 'tsv'], '').get_parsed_arg()
    assert args.equivalence_file == 'x.equiv'
    assert args.output_format == 'tsv'


def test_check_stage() -> None:
    assert check_stage('7') == 7
    assert check_stage('inf') == INFINITY
    assert check_stage('Infinity') == INFINITY
    with pytest.raises(argparse.ArgumentTypeError, match=r"integer or 'inf'"):
        check_stage('seven')


def test_check_field_arg() -> None:
    assert check_field_arg('q') == 'Q'
    assert check_field_arg('5') == 5
    assert check_field_arg('0') == 0
    with pytest.raises(argparse.ArgumentTypeError, match=r'Q or a prime'):
        check_field_arg('-3')
    with pytest.raises(argparse.ArgumentTypeError):
        check_field_arg('F2')
