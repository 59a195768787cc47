"""Exact verification of Grothendieck-group identities for SL2(Fq) on the Drinfeld curve."""

__version__ = "0.1.0"
