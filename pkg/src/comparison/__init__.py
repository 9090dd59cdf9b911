# Comparison module: universes, bounded search, exact procedures, dispatch
