"""acidfront command-line interface."""
