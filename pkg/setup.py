import setuptools

with open('requirements.txt') as fp:
    install_requires = [line.strip() for line in fp if line.strip() and not line.startswith('pre-commit')]

setuptools.setup(
    packages=setuptools.find_packages(include=['shv', 'shv.*']),
    install_requires=install_requires,
    package_data={'shv': ['py.typed']},
)
