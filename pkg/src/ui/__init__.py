# UI module: Streamlit components and workbench pages
