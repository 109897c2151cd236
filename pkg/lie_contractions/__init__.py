name = 'lie_contractions'
__version__ = '0.1'
