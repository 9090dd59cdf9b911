# Config module: YAML run configuration, parsing, and validation
