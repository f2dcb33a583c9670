"""# stratagem.commands.parse

Parse command: check HDDL files and summarize them.
"""
