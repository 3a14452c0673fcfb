from setuptools import setup


def readme():
    with open('README.rst') as f:
        return f.read()

setup(name='evirank',
      version='0.1.0',
      description='Evidence distances and ranking of basic belief '
                  'assignments on ordered frames of discernment.',
      long_description=readme(),
      long_description_content_type='text/x-rst',
      classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Information Analysis'
      ],
      keywords='dempster-shafer belief-functions evidence-theory distance',
      author='evirank contributors',
      license='BSD',
      packages=['evirank'],
      python_requires='>=3.7',
      install_requires=[
        'lxml',
        'numpy',
        'scipy'
      ],
      extras_require={
        'test': ['pytest', 'hypothesis'],
        'doc': ['sphinx'],
      },
      entry_points={
        'console_scripts': [
            'evirank = evirank.cli:main',
            'evirank-shell = evirank.shell:main',
        ],
      },
      include_package_data=True,
      zip_safe=True
)
