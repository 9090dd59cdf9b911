# Games module: interned game trees, notation, solver, constructions
