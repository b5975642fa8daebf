"""Verify the reverse-mode engine against central finite differences.

Runs the full suite: every differentiable op on random small shapes, plus
both discriminator networks end to end at S = 8 in 64-bit precision.
"""

from agegan.gradcheck import run_gradcheck_suite


def main():
    results = run_gradcheck_suite(seed=0, instances=3)
    worst = 0.0
    for name, err in results:
        status = "ok" if err <= 1e-3 else "FAIL"
        print("%-26s %.3e  %s" % (name, err, status))
        worst = max(worst, err)
    print("\nworst relative error: %.3e (tolerance 1e-3)" % worst)


if __name__ == "__main__":
    main()
