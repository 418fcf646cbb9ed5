"""Chow–Lam forms of subvarieties of Grassmannians and the varieties they recover."""

__version__ = "0.1.0"
