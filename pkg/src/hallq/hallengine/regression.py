"""Frozen regression instances, as ObjSpec strings keyed by suite and preset.

Generated by scripts/freeze_regression.py; every row is non-vacuous at q = 2 and 3.
"""

REGRESSION: dict = {'associativity': {'A2:1>2': [('I[1,1]@0', 'I[2,2]@0', 'I[2,2]@0', 'I[1,2]@0 + I[2,2]@0'),
                              ('I[1,1]@1', 'I[1,1]@0', 'I[1,1]@0', 'I[1,1]@0'),
                              ('I[2,2]@1',
                               'I[1,1]@-1',
                               'I[1,1]@0',
                               'I[1,1]@-1 + I[1,1]@0 + I[2,2]@1'),
                              ('I[1,1]@-1',
                               'I[2,2]@-1',
                               'I[2,2]@0',
                               'I[1,1]@-1 + I[2,2]@-1 + I[2,2]@0'),
                              ('I[1,1]@0', 'I[1,1]@0', 'I[1,2]@1', '2*I[1,1]@0 + I[1,2]@1'),
                              ('I[1,1]@-1', 'I[1,1]@-1', 'I[2,2]@1', '2*I[1,1]@-1 + I[2,2]@1'),
                              ('I[2,2]@-1',
                               'I[1,2]@-1',
                               'I[2,2]@1',
                               'I[1,2]@-1 + I[2,2]@-1 + I[2,2]@1'),
                              ('I[2,2]@0', 'I[2,2]@0', 'I[1,2]@0', 'I[1,2]@0 + 2*I[2,2]@0'),
                              ('I[2,2]@1', 'I[2,2]@-1', 'I[2,2]@-1', '2*I[2,2]@-1 + I[2,2]@1'),
                              ('I[1,2]@1', 'I[2,2]@-1', 'I[2,2]@-1', '2*I[2,2]@-1 + I[1,2]@1'),
                              ('I[1,2]@0', 'I[1,2]@1', 'I[1,1]@0', 'I[1,2]@0 + I[2,2]@1'),
                              ('I[2,2]@-1', 'I[2,2]@1', 'I[2,2]@0', 'I[2,2]@-1')],
                   'A3:1>2,2>3': [('I[3,3]@1', 'I[2,2]@1', 'I[1,3]@0', 'I[1,2]@0 + I[2,2]@1'),
                                  ('I[2,3]@0',
                                   'I[1,3]@0',
                                   'I[1,2]@1',
                                   'I[1,3]@0 + I[2,3]@0 + I[1,2]@1'),
                                  ('I[3,3]@-1',
                                   'I[1,2]@1',
                                   'I[1,1]@-1',
                                   'I[1,1]@-1 + I[3,3]@-1 + I[1,2]@1'),
                                  ('I[1,3]@0',
                                   'I[2,2]@-1',
                                   'I[3,3]@1',
                                   'I[2,2]@-1 + I[1,3]@0 + I[3,3]@1'),
                                  ('I[2,2]@-1',
                                   'I[1,3]@-1',
                                   'I[2,3]@-1',
                                   'I[1,3]@-1 + I[2,2]@-1 + I[2,3]@-1'),
                                  ('I[2,2]@1',
                                   'I[2,3]@-1',
                                   'I[1,2]@1',
                                   'I[2,3]@-1 + I[1,2]@1 + I[2,2]@1'),
                                  ('I[3,3]@1',
                                   'I[2,2]@-1',
                                   'I[1,3]@1',
                                   'I[2,2]@-1 + I[1,3]@1 + I[3,3]@1'),
                                  ('I[2,2]@1',
                                   'I[3,3]@-1',
                                   'I[1,2]@0',
                                   'I[3,3]@-1 + I[1,2]@0 + I[2,2]@1'),
                                  ('I[1,1]@0',
                                   'I[1,2]@1',
                                   'I[1,1]@-1',
                                   'I[1,1]@-1 + I[1,1]@0 + I[1,2]@1'),
                                  ('I[1,1]@1',
                                   'I[2,2]@1',
                                   'I[1,1]@0',
                                   'I[1,1]@0 + I[1,1]@1 + I[2,2]@1'),
                                  ('I[1,1]@-1',
                                   'I[1,2]@1',
                                   'I[1,3]@0',
                                   'I[1,1]@-1 + I[1,3]@0 + I[1,2]@1'),
                                  ('I[1,3]@0',
                                   'I[1,3]@1',
                                   'I[2,3]@0',
                                   'I[1,3]@0 + I[2,3]@0 + I[1,3]@1')],
                   'C1': [('C(1,1)@0', 'C(1,3)@0', 'C(1,1)@-1', 'C(1,1)@-1 + C(1,4)@0'),
                          ('C(1,1)@-1', 'C(1,1)@1', 'C(1,3)@0', 'C(1,1)@-1 + C(1,2)@0'),
                          ('C(1,1)@-1', 'C(1,3)@0', 'C(1,1)@0', 'C(1,1)@-1 + C(1,1)@0 + C(1,3)@0'),
                          ('C(1,1)@0', 'C(1,1)@1', 'C(1,3)@-1', 'C(1,3)@-1 + C(1,1)@0 + C(1,1)@1'),
                          ('C(1,1)@-1', 'C(1,2)@0', 'C(1,1)@-1', 'C(1,2)@-1 + C(1,2)@0'),
                          ('C(1,2)@-1', 'C(1,2)@-1', 'C(1,2)@-1', 'C(1,1)@-1 + C(1,5)@-1'),
                          ('C(1,2)@-1', 'C(1,2)@-1', 'C(1,3)@1', 'C(1,4)@-1 + C(1,3)@1'),
                          ('C(1,3)@1', 'C(1,3)@-1', 'C(1,2)@-1', 'C(1,5)@-1 + C(1,3)@1'),
                          ('C(1,3)@1', 'C(1,2)@0', 'C(1,2)@-1', 'C(1,1)@-1 + C(1,2)@1'),
                          ('C(1,2)@-1', 'C(1,1)@-1', 'C(1,1)@-1', 'C(1,4)@-1'),
                          ('C(1,3)@1', 'C(1,2)@-1', 'C(1,1)@1', 'C(1,2)@-1 + C(1,4)@1'),
                          ('C(1,3)@-1', 'C(1,1)@0', 'C(1,3)@1', 'C(1,3)@-1 + C(1,1)@0 + C(1,3)@1')],
                   'C2': [('C(1,1)@-1', 'C(1,2)@1', 'C(1,1)@1', 'C(1,1)@-1 + C(1,1)@1 + C(1,2)@1'),
                          ('C(2,1)@0', 'C(1,2)@-1', 'C(2,2)@0', 'C(1,1)@-1 + C(2,2)@0'),
                          ('C(1,2)@-1',
                           'C(2,1)@-1',
                           'C(1,2)@0',
                           'C(1,2)@-1 + C(2,1)@-1 + C(1,2)@0'),
                          ('C(2,1)@1', 'C(2,1)@1', 'C(2,2)@1', '2*C(2,1)@1 + C(2,2)@1'),
                          ('C(1,2)@-1', 'C(2,2)@0', 'C(1,1)@-1', 'C(1,3)@-1 + C(2,2)@0'),
                          ('C(2,2)@0', 'C(2,2)@-1', 'C(2,1)@-1', 'C(2,3)@-1 + C(2,2)@0'),
                          ('C(1,1)@0', 'C(2,2)@1', 'C(2,1)@-1', 'C(2,1)@-1 + C(1,1)@0 + C(2,2)@1'),
                          ('C(2,2)@0', 'C(1,1)@-1', 'C(1,2)@0', 'C(1,1)@-1 + C(1,1)@0 + C(2,3)@0'),
                          ('C(1,1)@0', 'C(1,1)@0', 'C(2,1)@1', '2*C(1,1)@0 + C(2,1)@1'),
                          ('C(2,1)@-1',
                           'C(1,1)@0',
                           'C(1,1)@-1',
                           'C(1,1)@-1 + C(2,1)@-1 + C(1,1)@0'),
                          ('C(2,1)@1', 'C(2,1)@1', 'C(1,1)@1', 'C(2,1)@1 + C(2,2)@1'),
                          ('C(1,1)@-1', 'C(1,2)@1', 'C(1,1)@0', 'C(1,1)@-1 + C(2,1)@1')],
                   'K': [('P0@1', 'Rinf(1)@-1', 'Rinf(1)@0', 'Rinf(1)@-1 + Rinf(1)@0 + P0@1'),
                         ('P0@1', 'R0(1)@0', 'P0@1', 'I0@0 + P0@1'),
                         ('R1(1)@1', 'R0(1)@-1', 'I0@-1', 'R0(1)@-1 + I0@-1 + R1(1)@1'),
                         ('R1(1)@0', 'P0@1', 'P0@0', 'P0@0 + R1(1)@0 + P0@1'),
                         ('P0@-1', 'P0@1', 'R1(1)@0', 'P0@-1 + R1(1)@0 + P0@1'),
                         ('P0@0', 'R0(1)@-1', 'R0(1)@1', 'R0(1)@-1 + P0@0 + R0(1)@1'),
                         ('P0@0', 'R0(1)@-1', 'R1(1)@0', 'I0@-1 + R1(1)@0'),
                         ('Rinf(1)@1', 'Rinf(1)@-1', 'I0@0', 'Rinf(1)@-1 + I0@0 + Rinf(1)@1'),
                         ('P0@0', 'Rinf(1)@-1', 'P0@1', 'I0@-1 + P0@1'),
                         ('I0@0', 'I0@0', 'Rinf(1)@0', 'I0@0 + I1@0'),
                         ('R0(1)@-1', 'P0@-1', 'P0@-1', 'P0@-1 + P1@-1'),
                         ('I0@-1', 'R1(1)@0', 'I0@1', 'I0@-1 + R1(1)@0 + I0@1')]},
 'reduction': {'A2:1>2': [('2*I[1,1]@-1', 'I[2,2]@0', 'I[1,1]@-1 + I[2,2]@0', 'I[1,1]@-1'),
                          ('I[1,1]@0', 'I[1,1]@1 + I[1,2]@1', 'I[1,1]@0 + I[1,1]@1', 'I[1,2]@1'),
                          ('I[1,1]@-1 + I[1,1]@0', 'I[2,2]@1', 'I[1,1]@-1 + I[2,2]@1', 'I[1,1]@0'),
                          ('I[1,2]@-1',
                           'I[1,1]@-1 + I[1,1]@1',
                           'I[1,2]@-1 + I[1,1]@1',
                           'I[1,1]@-1'),
                          ('I[1,1]@0',
                           'I[1,2]@-1 + I[2,2]@-1',
                           'I[1,2]@-1 + I[1,1]@0',
                           'I[2,2]@-1'),
                          ('I[1,1]@1 + I[2,2]@1', 'I[2,2]@0', 'I[2,2]@0 + I[2,2]@1', 'I[1,1]@1')],
               'A3:1>2,2>3': [('I[1,1]@-1 + I[1,3]@-1',
                               'I[3,3]@0',
                               'I[1,3]@-1 + I[3,3]@0',
                               'I[1,1]@-1'),
                              ('I[1,1]@1',
                               'I[1,1]@-1 + I[1,1]@0',
                               'I[1,1]@0 + I[1,1]@1',
                               'I[1,1]@-1'),
                              ('I[1,1]@-1 + I[2,2]@-1',
                               'I[1,3]@1',
                               'I[2,2]@-1 + I[1,3]@1',
                               'I[1,1]@-1'),
                              ('I[3,3]@0',
                               'I[1,1]@0 + I[1,3]@0',
                               'I[1,3]@0 + I[3,3]@0',
                               'I[1,1]@0'),
                              ('I[3,3]@0',
                               'I[1,2]@0 + I[1,1]@1',
                               'I[1,2]@0 + I[3,3]@0',
                               'I[1,1]@1'),
                              ('I[1,1]@-1', '2*I[1,3]@0', 'I[1,1]@-1 + I[1,3]@0', 'I[1,3]@0')],
               'A~21': [('T2b(1)@1', 'P2.0@-1 + T2b(1)@0', 'P2.0@-1 + T2b(1)@1', 'T2b(1)@0'),
                        ('I1.0@0 + P3.0@1', 'T2b(1)@0', 'T2b(1)@0 + I1.0@0', 'P3.0@1'),
                        ('T2a(1)@-1 + I2.0@0', 'T2a(1)@-1', '2*T2a(1)@-1', 'I2.0@0'),
                        ('T2b(1)@-1 + T2b(1)@0', 'P2.0@0', 'P2.0@0 + T2b(1)@0', 'T2b(1)@-1'),
                        ('P2.0@-1 + T2a(1)@0', 'P3.0@-1', 'P2.0@-1 + P3.0@-1', 'T2a(1)@0'),
                        ('I1.0@-1 + P3.0@1', 'I2.0@0', 'I2.0@0 + P3.0@1', 'I1.0@-1')],
               'C1': [('C(1,1)@-1', 'C(1,1)@0 + C(1,2)@0', 'C(1,1)@-1 + C(1,1)@0', 'C(1,2)@0'),
                      ('C(1,2)@-1 + C(1,3)@1', 'C(1,1)@-1', 'C(1,1)@-1 + C(1,2)@-1', 'C(1,3)@1'),
                      ('C(1,3)@-1 + C(1,3)@1', 'C(1,3)@0', '0', 'C(1,3)@-1'),
                      ('C(1,2)@-1 + C(1,1)@1', 'C(1,1)@1', '2*C(1,1)@1', 'C(1,2)@-1'),
                      ('C(1,3)@0 + C(1,1)@1', 'C(1,3)@1', 'C(1,1)@1 + C(1,3)@1', 'C(1,3)@0'),
                      ('C(1,1)@-1 + C(1,1)@0', 'C(1,3)@1', 'C(1,1)@0 + C(1,3)@1', 'C(1,1)@-1')],
               'C2': [('C(1,1)@-1 + C(1,2)@1', 'C(1,1)@0', 'C(1,1)@0 + C(1,2)@1', 'C(1,1)@-1'),
                      ('C(2,1)@1', 'C(1,1)@-1 + C(2,2)@0', 'C(2,2)@0 + C(2,1)@1', 'C(1,1)@-1'),
                      ('C(1,1)@0 + C(2,2)@0', 'C(1,1)@1', 'C(1,1)@0 + C(1,1)@1', 'C(2,2)@0'),
                      ('C(2,1)@-1 + C(2,2)@1', 'C(2,1)@0', 'C(2,1)@-1 + C(2,1)@0', 'C(2,2)@1'),
                      ('C(2,1)@-1 + C(2,1)@0', 'C(1,2)@1', 'C(2,1)@0 + C(1,2)@1', 'C(2,1)@-1'),
                      ('C(1,1)@-1 + C(1,1)@1', 'C(1,1)@0', 'C(1,1)@-1 + C(1,1)@0', 'C(1,1)@1')],
               'K': [('I0@-1', 'R0(1)@0 + R1(1)@1', 'I0@-1 + R0(1)@0', 'R1(1)@1'),
                     ('R0(1)@1', 'R1(1)@-1 + I0@-1', 'R1(1)@-1 + R0(1)@1', 'I0@-1'),
                     ('R0(1)@0', 'P0@0 + Rinf(1)@0', 'P1@0', 'Rinf(1)@0'),
                     ('Rinf(1)@-1 + R1(1)@1', 'R1(1)@1', '2*R1(1)@1', 'Rinf(1)@-1'),
                     ('Rinf(1)@1 + I0@1', 'R1(1)@-1', 'R1(1)@-1 + I0@1', 'Rinf(1)@1'),
                     ('I0@1', 'R1(1)@-1 + R1(1)@0', 'R1(1)@-1 + I0@1', 'R1(1)@0')]},
 'rotation': {'A2:1>2': [('I[1,1]@0', 'I[2,2]@0', 'I[1,2]@0'),
                         ('I[1,1]@1', 'I[1,1]@0', '0'),
                         ('I[1,1]@-1 + I[2,2]@1',
                          'I[1,1]@-1 + I[1,2]@1',
                          '2*I[1,1]@-1 + I[1,2]@1 + I[2,2]@1'),
                         ('I[1,2]@0 + I[2,2]@0', '2*I[1,1]@1', 'I[1,1]@0'),
                         ('I[1,2]@0', 'I[1,2]@-1 + I[1,2]@0', 'I[1,2]@0'),
                         ('I[1,1]@1', 'I[1,2]@1', 'I[1,2]@0 + I[2,2]@1')],
              'A3:1>2,2>3': [('I[1,2]@0', 'I[3,3]@-1', 'I[3,3]@-1 + I[1,2]@0'),
                             ('I[1,3]@0 + I[2,2]@0', 'I[2,3]@-1', 'I[1,3]@0 + I[3,3]@0'),
                             ('I[1,1]@-1 + I[1,1]@0',
                              'I[1,2]@-1',
                              'I[1,1]@-1 + I[1,2]@-1 + I[1,1]@0'),
                             ('I[3,3]@0 + I[1,2]@1', 'I[1,1]@0', 'I[3,3]@0 + I[2,2]@1'),
                             ('I[1,3]@1', 'I[1,2]@0 + I[2,2]@1', 'I[1,2]@0 + I[1,3]@1 + I[2,2]@1'),
                             ('I[1,1]@-1 + I[3,3]@1', 'I[2,2]@-1', 'I[1,2]@-1 + I[3,3]@1')],
              'A~21': [('P2.0@-1', 'T2a(1)@-1', 'P2.0@-1 + T2a(1)@-1'),
                       ('P2.0@-1', 'I1.0@-1', 'P2.0@-1 + I1.0@-1'),
                       ('P2.0@-1 + P3.0@-1', 'P3.0@0', 'P2.0@-1 + P3.0@-1 + P3.0@0'),
                       ('2*I1.0@0', 'T2a(1)@-1', 'T2a(1)@-1 + 2*I1.0@0'),
                       ('I2.0@0 + I2.0@1', 'I2.0@0', '2*I2.0@0 + I2.0@1'),
                       ('T2a(1)@-1 + P3.0@0', 'I1.0@-1', 'T2a(1)@-1 + I1.0@-1 + P3.0@0')],
              'C1': [('C(1,1)@1', 'C(1,3)@0', '2*C(1,2)@-1'),
                     ('C(1,3)@-1', 'C(1,2)@0', 'C(1,3)@-1 + C(1,2)@0'),
                     ('C(1,2)@-1 + C(1,3)@1', 'C(1,1)@0 + C(1,3)@0', 'C(1,3)@0'),
                     ('C(1,3)@-1', 'C(1,3)@-1 + C(1,3)@0', 'C(1,3)@-1 + C(1,2)@1'),
                     ('C(1,1)@-1 + C(1,1)@0', 'C(1,1)@-1 + C(1,3)@-1', '2*C(1,2)@-1'),
                     ('C(1,3)@-1', 'C(1,1)@1', 'C(1,3)@-1 + C(1,1)@1')],
              'C2': [('C(1,1)@1', 'C(2,2)@-1 + C(1,1)@0', 'C(2,2)@-1'),
                     ('C(1,1)@0', 'C(2,1)@1', 'C(1,1)@0 + C(2,1)@1'),
                     ('C(2,2)@1', 'C(2,1)@-1', 'C(2,1)@-1 + C(2,2)@1'),
                     ('C(2,1)@-1', 'C(1,1)@1', 'C(2,1)@-1 + C(1,1)@1'),
                     ('C(1,2)@-1 + C(2,1)@-1', 'C(2,2)@-1 + C(2,1)@1', 'C(1,2)@0'),
                     ('C(2,1)@1', 'C(1,1)@-1 + C(2,2)@-1', 'C(1,1)@-1 + C(2,2)@-1 + C(2,1)@1')],
              'K': [('P0@0 + R0(1)@1', 'I0@-1', 'R1(1)@-1 + P0@1'),
                    ('Rinf(1)@1 + I0@1', 'P0@-1 + R0(1)@1', 'P0@-1 + Rinf(1)@1 + I1@1'),
                    ('P0@-1 + P0@1', 'R1(1)@1 + Rinf(1)@1', 'P0@-1 + P0@1 + R1(1)@1 + Rinf(1)@1'),
                    ('I0@1', 'I0@-1 + R0(1)@1', 'I0@-1 + R0(1)@1 + I0@1'),
                    ('R1(1)@1', 'Rinf(1)@1', 'R1(1)@1 + Rinf(1)@1'),
                    ('R0(1)@-1 + Rinf(1)@1', 'P0@0 + I0@0', 'R0(1)@-1 + P0@0 + I0@0 + Rinf(1)@1')]},
 'selfext': {'A2:1>2': [('I[1,2]@-1', 'I[2,2]@-1 + I[2,2]@0'),
                        ('I[2,2]@-1', 'I[1,2]@1'),
                        ('I[2,2]@0', 'I[1,1]@-1 + I[1,2]@-1'),
                        ('I[1,1]@0', 'I[2,2]@-1'),
                        ('I[1,1]@-1 + I[1,1]@1', 'I[2,2]@-1')],
             'A3:1>2,2>3': [('I[2,2]@-1 + I[1,2]@0', 'I[3,3]@0 + I[2,2]@1'),
                            ('I[1,3]@-1', 'I[3,3]@-1'),
                            ('2*I[1,2]@0', 'I[1,2]@-1 + I[1,2]@0'),
                            ('I[2,3]@0 + I[1,1]@1', 'I[2,2]@-1 + I[3,3]@-1'),
                            ('I[3,3]@-1 + I[1,1]@0', 'I[2,2]@0')],
             'A~21': [('P3.0@-1 + P3.0@0', 'P3.0@0 + P2.0@1'),
                      ('I2.0@-1 + I2.0@1', 'T2a(1)@-1 + P2.0@0'),
                      ('P2.0@-1 + I2.0@-1', 'I2.0@0 + P3.0@1'),
                      ('P2.0@0', 'I2.0@0'),
                      ('P3.0@1', 'T2a(1)@-1')],
             'C1': [('C(1,1)@1', 'C(1,1)@0'),
                    ('C(1,1)@-1', 'C(1,3)@1'),
                    ('C(1,2)@-1', 'C(1,1)@0 + C(1,2)@1'),
                    ('C(1,1)@1', 'C(1,1)@-1 + C(1,2)@-1'),
                    ('C(1,1)@-1', 'C(1,2)@0 + C(1,1)@1')],
             'C2': [('C(2,2)@0 + C(1,1)@1', '2*C(2,1)@1'),
                    ('C(1,1)@-1', 'C(1,1)@0'),
                    ('C(2,1)@-1 + C(2,2)@0', 'C(2,1)@-1 + C(1,1)@1'),
                    ('C(2,1)@0 + C(2,2)@0', 'C(2,2)@-1'),
                    ('C(1,2)@-1', 'C(1,2)@-1')],
             'K': [('I0@0', 'R0(1)@0 + I0@0'),
                   ('R0(1)@-1 + I0@1', 'R1(1)@-1 + Rinf(1)@-1'),
                   ('I0@0', 'I0@-1 + I0@1'),
                   ('I0@0 + P0@1', 'P0@-1 + R1(1)@0'),
                   ('P0@1 + R0(1)@1', 'I0@0')]},
 'shift': {'C1': [('C(1,2)@0', 'C(1,1)@0', 'C(1,1)@0', 'C(1,2)@0'),
                  ('C(1,3)@0', 'C(1,1)@0', '0', 'C(1,2)@0'),
                  ('C(1,3)@0', 'C(1,3)@0', 'C(1,1)@0', 'C(1,1)@0'),
                  ('C(1,3)@0', 'C(1,1)@0', 'C(1,1)@0', 'C(1,3)@0'),
                  ('C(1,3)@0', 'C(1,4)@0', 'C(1,2)@0', 'C(1,1)@0')],
           'C2': [('C(1,1)@0', 'C(1,1)@0', 'C(1,1)@0', 'C(1,1)@0'),
                  ('C(1,2)@0', 'C(1,2)@0', 'C(1,2)@0', 'C(1,2)@0'),
                  ('C(2,1)@0', 'C(1,1)@0', 'C(1,1)@0', 'C(2,1)@0'),
                  ('C(2,1)@0', 'C(1,2)@0', 'C(1,2)@0', 'C(2,1)@0'),
                  ('C(1,1)@0', 'C(2,1)@0', 'C(2,1)@0', 'C(1,1)@0')]},
 'split': {'A2:1>2': [('I[1,1]@0', 'I[2,2]@0'),
                      ('I[1,1]@0', 'I[1,1]@0'),
                      ('I[1,1]@1', 'I[1,2]@-1'),
                      ('I[2,2]@0', 'I[1,1]@0'),
                      ('I[1,1]@0', 'I[2,2]@1'),
                      ('I[2,2]@-1', 'I[1,1]@-1')],
           'A3:1>2,2>3': [('I[1,1]@1 + I[3,3]@1', 'I[1,2]@0 + I[2,2]@0'),
                          ('I[1,1]@-1 + I[1,3]@1', 'I[2,3]@-1'),
                          ('2*I[3,3]@1', 'I[2,3]@0 + I[3,3]@0'),
                          ('I[1,1]@-1 + I[3,3]@0', 'I[1,3]@-1 + I[2,2]@0'),
                          ('I[2,3]@0', 'I[2,3]@-1 + I[1,1]@1'),
                          ('I[1,1]@1', 'I[1,2]@0 + I[3,3]@1')],
           'A~21': [('P2.0@0 + I1.0@1', 'I2.0@1'),
                    ('I1.0@-1 + I2.0@1', 'T2b(1)@-1 + I2.0@-1'),
                    ('P2.0@-1 + P3.0@1', 'P2.0@0 + P3.0@1'),
                    ('P3.0@0 + I1.0@1', 'P3.0@-1'),
                    ('2*T2b(1)@-1', 'P3.0@-1'),
                    ('T2b(1)@1', 'P3.0@-1 + I2.0@-1')],
           'C1': [('C(1,2)@1', 'C(1,2)@0'),
                  ('2*C(1,1)@-1', 'C(1,2)@0'),
                  ('C(1,1)@-1 + C(1,1)@1', 'C(1,1)@1'),
                  ('C(1,2)@-1 + C(1,1)@1', 'C(1,1)@0 + C(1,1)@1'),
                  ('C(1,2)@1', 'C(1,3)@1'),
                  ('C(1,2)@-1 + C(1,1)@0', 'C(1,1)@0')],
           'C2': [('C(2,2)@0', 'C(1,2)@1'),
                  ('C(2,1)@-1', 'C(2,2)@-1 + C(2,1)@1'),
                  ('C(2,1)@-1 + C(1,1)@0', 'C(2,2)@0 + C(1,1)@1'),
                  ('C(2,1)@-1 + C(2,2)@0', 'C(2,2)@-1 + C(1,1)@0'),
                  ('C(2,1)@1', 'C(1,1)@-1'),
                  ('C(1,2)@-1', 'C(1,2)@-1')],
           'K': [('I0@-1', 'R0(1)@0'),
                 ('I0@-1', '2*R0(1)@1'),
                 ('I0@-1 + Rinf(1)@0', 'R1(1)@-1 + I0@-1'),
                 ('Rinf(1)@0 + R1(1)@1', 'R1(1)@-1 + I0@-1'),
                 ('P0@1 + I0@1', 'I0@1'),
                 ('R1(1)@0', 'R1(1)@0 + P0@1')]},
 'support': {'A2:1>2': [('I[2,2]@0', 'I[1,1]@0', 'I[1,1]@1', 'I[1,1]@0 + I[2,2]@0 + I[1,1]@1'),
                        ('I[1,2]@1', 'I[1,1]@1', 'I[1,1]@0', 'I[1,1]@1 + I[2,2]@1'),
                        ('I[1,1]@0', 'I[1,2]@0', 'I[2,2]@0', 'I[1,1]@0 + I[1,2]@0 + I[2,2]@0'),
                        ('I[1,2]@0',
                         'I[1,1]@0 + I[1,1]@1',
                         'I[1,2]@0',
                         'I[1,1]@0 + 2*I[1,2]@0 + I[1,1]@1')],
             'A3:1>2,2>3': [('I[2,3]@1', 'I[2,3]@1', 'I[1,1]@1', 'I[1,1]@1 + 2*I[2,3]@1'),
                            ('I[1,2]@0', 'I[1,2]@0', 'I[1,1]@1', '2*I[1,2]@0 + I[1,1]@1'),
                            ('I[2,2]@1', 'I[2,3]@1', 'I[3,3]@0', 'I[3,3]@0 + I[2,2]@1 + I[2,3]@1'),
                            ('I[2,3]@1', 'I[1,3]@1', 'I[2,3]@1', 'I[1,3]@1 + 2*I[2,3]@1')],
             'A~21': [('I1.0@0 + T2a(1)@1', 'I1.0@1', 'T2b(1)@1', 'I1.0@0 + T2a(2)@1 + I1.0@1'),
                      ('P2.0@1', 'T2b(1)@1', 'P2.0@0', 'T2b(1)@1'),
                      ('P2.0@1', 'I1.0@1', 'I2.0@1', 'P2.0@1 + I1.0@1 + I2.0@1'),
                      ('P2.0@0',
                       'I1.0@0 + T2a(1)@1',
                       'T2b(1)@0',
                       'P2.0@0 + T2b(1)@0 + I1.0@0 + T2a(1)@1')],
             'K': [('R1(1)@0', 'I0@0', 'I0@0', 'R1(1)@0 + 2*I0@0'),
                   ('P0@1', 'I0@1', 'R0(1)@1', 'P0@1 + I1@1'),
                   ('R0(1)@1', 'Rinf(1)@1', 'I0@0', 'I0@0 + R0(1)@1 + Rinf(1)@1'),
                   ('P0@0', 'R1(1)@0', 'P0@1', 'P0@0 + R1(1)@0 + P0@1')]}}

# Triples for fitting on q = 2, 3, 5, 7, 11 and validating at q = 13, with the
# function each one fitted to when frozen (scripts/pick_fit_suite.py).
FIT_SUITE: dict = {
    "A2:1>2": [
        (("I[1,1]@0 + I[1,2]@1", "I[2,2]@0", "I[1,2]@0 + I[1,2]@1"), "(1)/(T)"),
        (("I[1,1]@-1 + I[1,1]@1", "I[2,2]@-1 + I[1,1]@0", "I[1,1]@-1 + I[2,2]@-1"), "(1)/(T - 1)"),
        (("I[2,2]@-1 + I[2,2]@1", "I[2,2]@0", "I[2,2]@-1"), "(1)/(T - 1)"),
        (("I[1,2]@-1 + I[1,2]@0", "I[1,2]@-1", "I[1,2]@-1"), "(1)/(T - 1)"),
        (("I[1,1]@1", "I[1,1]@0", "0"), "(1)/(T - 1)"),
    ],
    "A3:1>2,2>3": [
        (("I[1,3]@0 + I[2,2]@1", "I[2,2]@0 + I[2,3]@1", "I[1,3]@0 + I[2,3]@1"), "(1)/(T - 1)"),
        (("I[2,3]@0", "I[2,3]@-1", "0"), "(1)/(T - 1)"),
        (("I[2,3]@0 + I[2,2]@1", "I[2,2]@0", "I[2,3]@0"), "(1)/(T - 1)"),
        (("I[3,3]@1", "I[1,1]@-1 + I[3,3]@0", "I[1,1]@-1"), "(1)/(T - 1)"),
        (("I[1,3]@0 + I[3,3]@0", "I[1,1]@-1 + I[2,3]@0", "2*I[2,3]@0 + I[3,3]@0"), "(T + 1)/(1)"),
    ],
    "C1": [
        (("C(1,3)@0", "C(1,3)@0", "C(1,2)@0 + C(1,4)@0"), "(T**2 - T)/(1)"),
        (("C(1,1)@0", "C(1,1)@-1 + C(1,3)@-1", "C(1,3)@-1"), "(1)/(T**2 - T)"),
        (("C(1,2)@1", "C(1,2)@-1 + C(1,1)@0", "C(1,2)@-1 + C(1,1)@1"), "(1)/(T)"),
        (("C(1,2)@0 + C(1,1)@1", "C(1,3)@0 + C(1,2)@1", "C(1,4)@0 + C(1,2)@1"), "(1)/(T)"),
        (("C(1,3)@-1", "C(1,3)@-1", "C(1,1)@-1 + C(1,5)@-1"), "(T - 1)/(1)"),
    ],
    "C2": [
        (("C(1,2)@0 + C(2,2)@0", "C(1,2)@0", "C(1,1)@0 + C(1,2)@0 + C(2,3)@0"), "(T - 1)/(1)"),
        (("C(1,2)@0", "C(1,1)@0 + C(2,2)@0", "C(1,1)@0 + C(1,3)@0 + C(2,1)@0"), "(T - 1)/(1)"),
        (("C(1,1)@-1 + C(1,2)@1", "C(2,2)@-1 + C(2,2)@0", "C(1,3)@-1 + C(2,2)@0 + C(1,2)@1"), "(1)/(1)"),
        (("C(2,2)@-1 + C(1,1)@0", "C(1,1)@-1 + C(1,2)@1", "C(2,2)@-1 + C(1,2)@1"), "(1)/(T - 1)"),
        (("C(2,2)@1", "C(1,2)@1 + C(2,1)@1", "C(1,2)@1 + C(2,3)@1"), "(T)/(1)"),
    ],
    "K": [
        (("I0@-1 + P0@1", "P0@-1", "Rinf(1)@-1 + P0@1"), "(T)/(1)"),
        (("R1(1)@-1 + I0@0", "I0@-1 + R0(1)@0", "R1(1)@-1 + I0@-1 + I1@0"), "(1)/(T)"),
        (("R1(1)@0 + R1(1)@1", "R1(1)@0 + Rinf(1)@1", "R1(1)@0 + Rinf(1)@1"), "(1)/(T - 1)"),
        (("R0(1)@1", "I0@0", "P0@1"), "(1)/(1)"),
        (("R1(1)@-1 + Rinf(1)@1", "I0@-1 + P0@1", "R1(1)@-1 + I0@-1 + P1@1"), "(1)/(T)"),
    ],
    "A~21": [
        (("I1.0@-1 + T2a(1)@0", "T2b(1)@0", "I1.0@-1 + T2a(2)@0"), "(1)/(1)"),
        (("T2a(1)@0 + P2.0@1", "T2a(1)@-1 + P2.0@0", "P2.0@0 + P2.0@1"), "(1)/(T**2 - T)"),
        (("T2a(1)@0 + T2b(1)@1", "I1.0@0", "T2a(1)@0 + P3.0@1"), "(1)/(1)"),
        (("T2b(1)@0 + I2.0@0", "I2.0@-1 + I2.0@0", "T2b(1)@0 + I2.0@0"), "(1)/(T - 1)"),
        (("T2b(1)@-1", "P2.0@-1 + T2a(1)@1", "P1.0@-1 + T2a(1)@1"), "(1)/(1)"),
    ],
}
