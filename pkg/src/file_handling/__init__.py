# File handling module: CSV, Excel, and JSON-lines export
