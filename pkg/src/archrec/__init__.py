"""archrec: functional component architecture recovery from source corpora."""

__version__ = "0.1.0"
