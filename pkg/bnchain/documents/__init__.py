# flake8: noqa

from ._codec import FORMAT_VERSION, FillingBundle, decode, load_document
