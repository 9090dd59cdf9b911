# Impartial module: misere canonical forms and the impartial-to-dicot bridge
