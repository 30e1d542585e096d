"""Named hyperstructure classes, divisions and the hyperring commutative-fundamental relation."""
