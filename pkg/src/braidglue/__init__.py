"""Exact workbench for finite Coxeter groups, braid-group representations,
the K_W(V) gluing construction, glued module categories over gluing
algebras, and the group-determinant obstruction for the Weyl group of SL3."""

__version__ = "0.1.0"
