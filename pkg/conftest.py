# -*- coding: utf-8 -*-
# puts the repository root on sys.path so `core` imports without installation
