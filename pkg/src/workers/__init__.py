"""Worker pool for parallel oracle cross-checks."""
