"""# stratagem.commands.bench

Bench command: run the (system x algorithm x problem) matrix over suites and append run records.
"""
