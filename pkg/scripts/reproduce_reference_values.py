"""Print published reference values next to the values computed here."""

import numpy as np

from razavy_dw import (
    CoupledModel,
    RazavyModel,
    Wavepacket,
    find_minima,
    razavy_eigenvalues,
    solve,
    tunneling_period,
    uncertainty,
)
from razavy_dw.dynamics import density_peak


def row(label, reference, computed):
    print(f"{label:<34} {reference:>18} {computed:>18}")


def main():
    dw = RazavyModel()
    lv = razavy_eigenvalues(dw)
    print(f"{'quantity':<34} {'reference':>18} {'computed':>18}")
    for k, ref in enumerate(("-4.73205", "-4.64575", "-1.26795", "0.645751")):
        row(f"eps{k}", ref, f"{lv.as_tuple()[k]:.6f}")
    row("delta", "0.0863", f"{lv.delta:.7f}")

    lin = solve(CoupledModel.build())
    table = lin.table
    refs = dict(gamma="1.13823", gamma0="1.36128", gamma1="1.44467", eta="0.09823", gamma_y="0.76117",
                eta_y="0.65689", chi0="2.58707", chi1="3.17399", b="0.496213")
    for name, value in table.rows():
        row(name, refs[name], f"{value:.6f}")

    quad = solve(CoupledModel.build(d=2))
    row("Omega1 (d=1, c=1)", "0.03958", f"{lin.omega1:.6f}")
    row("T (d=1, c=1)", "158.73", f"{lin.period:.4f}")
    row("T (d=2, c=1)", "210.25", f"{quad.period:.4f}")

    four = solve(CoupledModel.build(c=0.1))
    row("T four-term (c=0.1)", "71.6084", f"{tunneling_period(Wavepacket.four_term(four)):.4f}")
    row("2 pi/(E1-E0) (c=0.1)", "74.1706", f"{four.period:.4f}")

    n1 = solve(CoupledModel.build(alpha=2.0, N=1))
    n5 = solve(CoupledModel.build(alpha=2.0, N=5))
    row("Omega1 (alpha=2, N=1)", "0.594662e-3", f"{n1.omega1:.6e}")
    row("Omega1 (alpha=2, N=5)", "0.923365e-4", f"{n5.omega1:.6e}")
    row("T5 / T1", "64.4", f"{n5.period / n1.period:.3f}")

    for label, dec, ref in (("peak d=1", lin, "(1.2353, 0.61990)"), ("peak d=2", quad, "(1.2354, 0.6468)")):
        x, y, _ = density_peak(Wavepacket.two_term(dec))
        row(label, ref, f"({x:.4f}, {y:.5f})")

    _, _, prod = uncertainty(Wavepacket.two_term(lin), np.array([0.0]))
    row("dx dp_x at t=0", "0.556875", f"{prod[0]:.6f}")
    p = max(find_minima(lin.model), key=lambda q: q.x)
    row("minimum (d=1, c=1)", "(1.4120, 1.8959)", f"({p.x:.4f}, {p.y:.4f})")
    row("U at minimum", "-9.438", f"{p.value:.4f}")



if __name__ == "__main__":
    main()
