"""polyharm test suite."""
