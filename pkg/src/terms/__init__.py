"""Term language: syntax, parser and evaluation on the algebra of nonempty subsets."""
