"""# stratagem.commands.select

Select command: evaluate stored candidates on the suite's training problem and select one.
"""
