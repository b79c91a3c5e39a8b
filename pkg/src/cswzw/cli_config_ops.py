import json

import click
import yaml

from cswzw.config import get_config_manager
from cswzw.models.scenario import SUITE_NAMES
from .cli_utils import format_table_data, load_scenario, success_message


@click.group(help='Scenario configuration commands')
def config():
    pass


@config.command('show', help='Display a scenario with every default filled in')
@click.argument('config_file', required=False)
def config_show(config_file):
    scenario = load_scenario(config_file)
    click.echo(click.style("Scenario", fg='blue', bold=True))
    click.echo("=" * 50)
    click.echo(yaml.safe_dump(scenario.to_dict(), default_flow_style=False, sort_keys=False))


@config.command('sample', help='Print (or write) the default scenario document')
@click.option('--output', '-o', help='Write to this file instead of stdout')
def config_sample(output):
    document = get_config_manager().get_default_scenario()
    text = json.dumps(document, indent=2) + "\n"
    if output:
        with open(output, 'w') as f:
            f.write(text)
        success_message(f"Sample scenario written to {output}")
    else:
        click.echo(text)


@config.command('suites', help='List the suites and their sample counts')
@click.argument('config_file', required=False)
def config_suites(config_file):
    scenario = load_scenario(config_file)
    rows = [(name, scenario.samples_for(name), 'yes' if name in scenario.suites else 'no') for name in SUITE_NAMES]
    format_table_data(rows, ['Suite', 'Samples', 'Selected'])
