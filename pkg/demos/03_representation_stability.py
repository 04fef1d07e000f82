"""Watching representation stability happen.

Summands are named independently of n by dropping the first row of the
(plus) partition -- the padded-partition convention.  Under those stable
names, the multiplicity vector of H^k becomes constant once n is large
enough (no later than n = 4k).  A stability scan decomposes a whole range
of n and reports the onset.
"""

from stringmotion import format_stable, stability_scan

for k, kind in ((1, "Wn"), (1, "Sn"), (2, "Sn"), (2, "Wn")):
    report = stability_scan(k, kind)
    print(f"\nH^{k} as {kind}-representations, n = {report.n_min}..{report.n_max}:")
    for n in sorted(report.vectors):
        stable = report.vectors[n].stable()
        row = ", ".join(
            f"{format_stable(kind, body)} x{m}" for body, m in sorted(stable.items())
        )
        print(f"  n={n}: {row if row else '0'}")
    print(f"  -> stable from n = {report.stable_from} (bound 4k = {report.bound})")

# Scanning a degree whose bound lies beyond the range yields a provisional
# report: the tool refuses to claim an onset it has not seen repeat.
report = stability_scan(3, "Sn", 9)
print(
    f"\nH^3 over S_n scanned to n = 9: stable_from = {report.stable_from}, "
    f"provisional = {report.provisional} (bound 4k = {report.bound})"
)
