"""# stratagem.commands.generate

Generate command: assemble a suite's prompt, request candidates and store them classified.
"""
