"""Figure rendering for the report-producing commands.

The delimited tables are the primary artifact; rendering is opt-in and
writes one figure file per invocation.  The Agg backend is forced so
rendering works without a display.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    return plt


def render_series(x: Sequence[float],
                  series: Mapping[str, Sequence[float | None]], *,
                  xlabel: str, ylabel: str, title: str,
                  path: str) -> None:
    """Plot named series over a shared abscissa and write the figure.

    Missing values break the corresponding line.  The y axis switches
    to log scale when every plotted value is positive and the spread
    exceeds three decades, which keeps tail sweeps readable.
    """
    plt = _pyplot()
    finite = [v for values in series.values() for v in values
              if v is not None and math.isfinite(v)]
    use_log = (bool(finite) and all(v > 0.0 for v in finite)
               and max(finite) / min(finite) > 1e3)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, values in series.items():
        cleaned = [math.nan if v is None else float(v) for v in values]
        ax.plot(list(x), cleaned, label=name, linewidth=1.4)
    if use_log:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    if len(series) > 1:
        ax.legend(loc="best", fontsize=9)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
