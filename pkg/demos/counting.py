"""Box counts for the diagonal cone 9*x1^2 + 36*x2^2 - 4*x3^2 = 0.

The count grows no faster than N*ln(N); the comparison column is the
closed-form ceiling 3*pi*N*ln(N)/2.
"""
from quaddiag import count_ladder, fermat_cone_bound, parse_form

f = parse_form("9*x1^2 + 36*x2^2 - 4*x3^2 = 0")
report = count_ladder(f, [25, 50, 100, 200, 400, 800])
print(f"{'N':>5} {'R(N)':>7} {'R/N':>6} {'3piNlnN/2':>10}")
for N, count in report.ladder:
    print(f"{N:>5} {count:>7} {count / N:>6.2f} {fermat_cone_bound(N):>10.1f}")
print(f"best-fitting growth class: {report.growth_class}")
for name, s in report.fit_stats.items():
    print(f"  {name:<10} relative rms residual {s['residual']:.4f}")
