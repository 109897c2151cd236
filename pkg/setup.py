from setuptools import setup

setup(name='lie_contractions',
      version='0.1',
      description='Exact Inonu-Wigner contractions, dual real forms and contraction families of Lie algebras.',
      author='The lie-contractions developers',
      packages=['lie_contractions'],
      package_data={'lie_contractions': ['schemas/*.json', 'config/*.json']},
      python_requires='>=3.8',
      install_requires=['numpy', 'jsonschema'],
      setup_requires=['pytest-runner'],
      tests_require=['pytest', 'hypothesis'],
      entry_points={'console_scripts': ['lie-contractions = lie_contractions.cli:main']})
