# CLI tools for penning
# Each module with a main() here is listed by `python -m penning.cli`
