from rggdim.cli import run

run()
