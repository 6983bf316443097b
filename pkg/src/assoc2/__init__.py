"""assoc2: an exact-arithmetic workbench for two-term homotopy associative
algebras and crossed modules over associative algebras.

Structure constants in, diagnosed identities out: axiom checkers with full
violation lists, second cohomology as exact rational linear algebra,
one-parameter deformations with Nijenhuis operators, and abelian extensions
classified by equivalence-witness search.
"""

__version__ = "0.1.0"
