"""q-deformed Young operators in a Clifford algebra with non-symmetric form."""

__version__ = "0.1.0"
