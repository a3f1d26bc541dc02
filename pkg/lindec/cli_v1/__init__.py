from lindec.cli_v1.commands import (
    EXIT_CONFIG,
    EXIT_DATA,
    EXIT_INTERNAL,
    EXIT_OK,
    cmd_list,
    cmd_plotdata,
    cmd_run,
    cmd_synth,
    exit_status_for,
)
from lindec.cli_v1.plotdata import PlotSeries, build_plot_series, write_plot_series

__all__ = [
    "EXIT_CONFIG",
    "EXIT_DATA",
    "EXIT_INTERNAL",
    "EXIT_OK",
    "PlotSeries",
    "build_plot_series",
    "cmd_list",
    "cmd_plotdata",
    "cmd_run",
    "cmd_synth",
    "exit_status_for",
    "write_plot_series",
]
