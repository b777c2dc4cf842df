import pathlib

sample_dir = pathlib.Path(__file__).parent / 'sample_data'
