# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

