"""# stratagem.commands.report

Report command: aggregate run records into CSV tables.
"""
