from neighborly.cli import app

app(prog_name="neighborly")
