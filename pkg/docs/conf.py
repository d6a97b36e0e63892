# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

project = "SciKit-Toric-Heights"
copyright = "2026, scikit-toric-heights developers. All rights reserved"
author = "scikit-toric-heights developers"

# Get the version from the manifest, so the docs build without an install
with open("../pyproject.toml", "r") as f:
    for line in f.readlines():
        if line.startswith("version"):
            version = line.split("=")[-1].strip().replace('"', "")
            break  # first version line is the project version
release = version

# -- General configuration ---------------------------------------------------

# If your documentation needs a minimal Sphinx version, state it here.
needs_sphinx = "4.0.0"

# Add any Sphinx extension module names here, as strings. They can be
# extensions coming with Sphinx (named 'sphinx.ext.*') or your custom
# ones.
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "numpydoc",
    "sphinx.ext.coverage",
    "sphinx_panels",
]

# this is needed for some reason...
# see https://github.com/numpy/numpydoc/issues/69
numpydoc_class_members_toctree = False

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
    "mpmath": ("https://mpmath.org/doc/current/", None),
}

# Add any paths that contain templates here, relative to this directory.
templates_path = ["_templates"]

# The suffix(es) of source filenames.
source_suffix = ".rst"

# The master toctree document.
master_doc = "index"

language = "en"

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = "sphinx"

# A lits of ignored prefixes for module index sorting
modindex_common_prefix = ["skth."]


# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"

html_theme_options = {
    "show_nav_level": 1,
    "show_toc_level": 2,
    "navbar_start": ["navbar-logo", "version"],
}

# The name for this set of Sphinx documents.  If None, it defaults to
# "<project> v<release> documentation".
html_title = f"{project} Documentation"

html_sidebars = {"**": ["search-field.html", "sidebar-nav-bs.html"]}

# -- Options for HTMLHelp output ---------------------------------------------

# Output file base name for HTML help builder.
htmlhelp_basename = f"{project.lower()}doc"


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (
        master_doc,
        f"{project.lower()}.tex",
        f"{project} Documentation",
        author,
        "manual",
    ),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, f"{project.lower()}", f"{project} Documentation", [author], 1)
]
