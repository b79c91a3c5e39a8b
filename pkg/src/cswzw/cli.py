import click

from cswzw import __version__

# Import command groups from ops files
from .cli_config_ops import config

# Import individual run commands
from .cli_run_ops import RUN_COMMANDS


# Main CLI group
@click.group()
@click.version_option(version=__version__)
def cli():
    """Chern-Simons / WZW workbench - verify the linear bulk and boundary theories"""
    pass


cli.add_command(config)

for command in RUN_COMMANDS:
    cli.add_command(command)


def main():
    cli()


if __name__ == '__main__':
    main()
