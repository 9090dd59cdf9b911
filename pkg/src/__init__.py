# Misere Workbench - misere game computation and verification
