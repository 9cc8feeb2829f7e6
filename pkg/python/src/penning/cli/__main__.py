'''Main entry point for penning.cli - shows available CLI tools'''
import importlib
import inspect
from pathlib import Path

from penning.logger import Logger


def discover_cli_tools():
    '''Find modules in this package that expose a main() function'''
    tools = []
    for py_file in Path(__file__).parent.glob('*.py'):
        if py_file.stem in ('__init__', '__main__'):
            continue
        module_name = f'penning.cli.{py_file.stem}'
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            Logger.warn(f'skipping {module_name}: {e}')
            continue
        if not callable(getattr(module, 'main', None)):
            continue
        main_doc = inspect.getdoc(module.main) or ''
        module_doc = inspect.getdoc(module) or ''
        description = (main_doc or module_doc).split('\n')[0]
        tools.append({'name': py_file.stem, 'module': module_name, 'description': description})
    return sorted(tools, key=lambda t: t['name'])


def main():
    '''Display available CLI tools and usage information'''
    tools = discover_cli_tools()

    print('=' * 60)
    print('penning CLI tools')
    print('=' * 60)
    print()
    if not tools:
        print('No CLI tools found.')
        return

    print('Available commands:')
    print()
    for i, tool in enumerate(tools, 1):
        print(f'  {i}. {tool["name"]}')
        if tool['description']:
            print(f'     {tool["description"]}')
        print(f'     Usage: python -m {tool["module"]} [options]')
        print()


if __name__ == '__main__':
    main()
