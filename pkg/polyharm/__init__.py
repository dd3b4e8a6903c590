"""polyharm - fundamental functions, generalized Taylor series and polyharmonic continuation."""

__version__ = "0.1.0"
