"""# stratagem.commands.ground

Ground command: ground a problem and report or dump the model.
"""
