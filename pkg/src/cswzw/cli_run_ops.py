import sys

import click

from cswzw.services.plot_data import emit_plot_data
from cswzw.services.runner import SuiteRunner
from cswzw.utils import errors
from .cli_utils import (
    EXIT_CONFIG_ERROR,
    EXIT_OK,
    EXIT_SUITE_FAILURE,
    configure_logging,
    error_message,
    format_table_data,
    info_message,
    load_scenario,
    success_message,
    warning_message,
)


@click.command('run', help='Run verification suites and write one JSON report per suite')
@click.argument('config_file', required=False)
@click.option('--out', 'output_dir', help='Report directory (overrides the scenario and CSWZW_OUTPUT_DIR)')
@click.option('--suite', 'suites', multiple=True, help='Suite to run; repeat for several (default: the scenario list)')
@click.option('--backend', type=click.Choice(['exact', 'float']), help='Scalar backend')
@click.option('--seed', type=int, help='Master seed for all sampling')
@click.option('--workers', type=int, help='Number of suites run concurrently')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
def run(config_file, output_dir, suites, backend, seed, workers, verbose):
    config = load_scenario(config_file, {'backend': backend, 'seed': seed, 'max_workers': workers,
                                         'output_dir': output_dir})
    configure_logging(config, verbose)

    try:
        summary = SuiteRunner(config).run(suites)
    except errors.ConfigError as e:
        for problem in e.errors:
            error_message(problem)
        sys.exit(EXIT_CONFIG_ERROR)

    rows = [(r.suite, len(r.checks), len(r.failures), f"{r.max_residual:g}", 'PASS' if r.passed else 'FAIL')
            for r in summary.reports]
    format_table_data(rows, ['Suite', 'Checks', 'Failures', 'Max residual', 'Result'])
    click.echo("")
    for report in summary.reports:
        if report.error:
            warning_message(f"{report.suite} raised {report.error}")

    if summary.passed:
        success_message(f"All suites passed; reports in {summary.output_dir}")
        sys.exit(EXIT_OK)
    error_message(f"Failed suites: {', '.join(summary.failed_suites)}; reports in {summary.output_dir}")
    sys.exit(EXIT_SUITE_FAILURE)


@click.command('plot-data', help='Write CSV profiles for the selected plot tables')
@click.argument('config_file', required=False)
@click.option('--out', 'output_dir', help='Output directory')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
def plot_data(config_file, output_dir, verbose):
    config = load_scenario(config_file, {'output_dir': output_dir})
    configure_logging(config, verbose)
    written = emit_plot_data(config)
    if not written:
        info_message("No plot data selected; nothing written")
        return
    for path in written:
        success_message(f"Wrote {path}")


@click.command('validate', help='Check a scenario document without running anything')
@click.argument('config_file')
def validate(config_file):
    config = load_scenario(config_file)
    success_message(f"Scenario {config_file} is valid")
    info_message(f"{config.geometry.value}, chirality {config.chirality.value}, backend {config.backend.value}, "
                 f"seed {config.seed}, suites: {', '.join(config.suites)}")


RUN_COMMANDS = [run, plot_data, validate]
