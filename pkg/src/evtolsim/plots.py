"""Figure rendering for the report path.

Renders the two standard charts to image files: energy-per-passenger-mile
curves against terrestrial baselines, and battery requirement points with
EWF / pack-failure uncertainty bars over the pack dataset.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .battery import PackCategory

_CATEGORY_GREYS = {
    PackCategory.CURRENT_LI_ION: "0.70",
    PackCategory.NOVEL_PROTOTYPE_LI_ION: "0.45",
    PackCategory.ADVANCED: "0.15",
}


def save_energy_curve_figure(curves, baselines, path) -> None:
    """Plot Wh/passenger-mile vs range curves with horizontal baselines.

    curves: [(label, ranges_mi, values)]; baselines: [(label, value)].
    """
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for label, ranges, values in curves:
        ax.plot(ranges, values, label=label, linewidth=1.6)
    for label, value in baselines:
        ax.axhline(value, color="0.4", linestyle="--", linewidth=0.9)
        ax.annotate(f"{label} ({value:.0f})", xy=(1.0, value),
                    xycoords=("axes fraction", "data"),
                    xytext=(-4, 3), textcoords="offset points",
                    ha="right", fontsize=7, color="0.25")
    ax.set_xlabel("Trip distance (mi)")
    ax.set_ylabel("Energy consumption (Wh/passenger-mi)")
    ax.set_ylim(bottom=0.0)
    ax.legend(fontsize=8, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_battery_requirement_figure(points, packs, path) -> None:
    """Scatter of requirement points with uncertainty bars over pack data.

    points: [(label, energy_mid, power_base, energy_low, energy_high,
    power_failure)] in Wh/kg and W/kg; packs: BatteryPackRecord sequence.
    """
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for label, e_mid, p_base, e_low, e_high, p_failure in points:
        ax.errorbar([e_mid], [p_base],
                    xerr=[[e_mid - e_low], [e_high - e_mid]],
                    yerr=[[0.0], [p_failure - p_base]],
                    marker="o", markersize=5, capsize=3, linewidth=1.1)
        ax.annotate(label, xy=(e_mid, p_base), xytext=(5, 4),
                    textcoords="offset points", fontsize=7)
    seen = set()
    for pack in packs:
        label = pack.category.value if pack.category not in seen else None
        seen.add(pack.category)
        ax.scatter([pack.specific_energy_wh_per_kg], [pack.specific_power_w_per_kg],
                   marker="D", s=28, color=_CATEGORY_GREYS[pack.category],
                   label=label, zorder=3)
    ax.set_xlabel("Pack specific energy (Wh/kg)")
    ax.set_ylabel("Pack specific power (W/kg)")
    ax.set_yscale("log")
    if packs:
        ax.legend(fontsize=8, loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
