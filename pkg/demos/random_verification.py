"""
Cross-checking random coefficient vectors
=========================================

"""

from unimodular.checks import run_checks, summarize
from unimodular.corpus import corpus

results = [run_checks(c) for c in corpus(seed=1, count=100)]
for name, counts in summarize(results).items():
    print(f"{name:30s} {counts['passed']:4d} passed {counts['failed']:3d} failed")
