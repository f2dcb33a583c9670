"""# stratagem.commands.solve

Solve command: ground a problem and search it with one heuristic and algorithm.
"""
