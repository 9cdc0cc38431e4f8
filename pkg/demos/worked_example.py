"""
The equation 12 X1 + 4 X2 + 2 X3 + 3 X4 = 0
============================================

Every quantity of the walkthrough, recomputed and compared with the stored
goldens.
"""

from unimodular.cli import example_items

for name, expected, got in example_items():
    print(f"{'ok ' if expected == got else 'BAD'} {name:32s} {got}")
