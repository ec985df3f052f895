from .cli_controller import main, run_command

__all__ = ['main', 'run_command']
