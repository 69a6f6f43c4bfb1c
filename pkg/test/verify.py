import sys
import os

parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)
import troplab

verify = troplab.verify

genus2 = {'C': [7, 3, 1, 0]}

report = verify.run_check('counting', genus2)
assert report.verdict == 'pass'
assert report.grade == 'proposition'
assert report.witness is None
assert report.details['(7,3,1,0)']['toda'] == 63
assert report.details['(7,3,1,0)']['bbs'] == 21
assert report.params == {'C': ['7', '3', '1', '0'], 'seed': 0, 'trials': 1000, 'steps': 20,
                         'orders': 100}

# Reports serialize to the shipped schema
document = report.to_json()
troplab.troptools.validate(document, 'check_report')
assert 'runtime' not in document
assert 'runtime' in report.to_json(timing=True)

report = verify.run_check('t-cover', genus2)
assert report.passed
assert report.details['(7,3,1,0)'] == [21, 21, 21]

report = verify.run_check('linearization', {'C': [8, 3, 0]})
assert report.verdict == 'pass'
assert report.details['(8,3,0)']['delta'] == ['3']
assert report.details['(8,3,0)']['v_matches'] == ['K', 'Lambda']

report = verify.run_check('conservation', {'trials': 50})
assert report.passed
assert report.details == {'states': 250}

# The general selection rule agrees with the printed formulas up to genus 5
for g in (4, 5):
    report = verify.run_check('conservation', {'trials': 100, 'g': g})
    assert report.passed, report.to_json()
    assert report.details == {'states': 100}

# T^0 states of every benchmark isolevel set have positive Q_2..Q_g, W_1..W_g
report = verify.run_check('t-cover', {})
assert report.passed, report.to_json()
assert report.details == {'(8,3,0)': [8, 8], '(7,3,1,0)': [21, 21, 21],
                          '(13,6,3,1,0)': [273, 273, 273, 273]}

# Each box-ball state is evolved under a hundred random ball orders
report = verify.run_check('bbs-order', genus2)
assert report.passed
assert report.details == {'states': 21, 'runs': 2100}
report = verify.run_check('bbs-order', {'C': [8, 3, 0], 'orders': 5})
assert report.details == {'states': 8, 'runs': 40}

# An unreadable box-ball row ends a check with a witness instead of an exception
try:
    verify._read(troplab.bbs.BBSState('1010100'), 3)
except verify._Failure as failure:
    assert failure.witness['bbs'] == '1010100'
    assert failure.witness['t'] == 3
else:
    raise AssertionError('Should have failed reading a non generic box-ball row')

report = verify.run_check('det-identities', {'trials': 10, 'det_trials': 5})
assert report.passed
assert report.details == {'curves': 30}

for name in ['psi-roundtrip', 'psi-image-in-Dg', 'bbs-toda-diagram', 'beta-rho',
             'lemma-ordering', 'bbs-order']:
    report = verify.run_check(name, dict(genus2, trials=20, steps=7))
    assert report.passed, report.to_json()

report = verify.run_check('psi-roundtrip', {'C': [8, 3, 0], 'trials': 20})
assert report.passed
assert report.details['random_points'] == 20

# pi and eta on whole isolevel sets of genus 2 and 3
for C in ([7, 3, 1, 0], [13, 6, 3, 1, 0]):
    report = verify.run_check('pi-injectivity', {'C': C})
    assert report.passed, report.to_json()
    assert report.grade == 'conjecture'
    assert all(result['bijective'] for key, result in report.details.items() if key != 'summary')

    assert verify.run_check('eta-injectivity-on-Dg', {'C': C}).passed
    assert verify.run_check('linearization', {'C': C}).passed

report = verify.run_check('pi-injectivity', genus2)
assert report.details['(7,3,1,0)'] == {'states': 63, 'detK': 63, 'bijective': True}

# In genus 3 the free choice of (s_2, s_3) can change the divisor
report = verify.run_check('psi-exchange', {'C': [13, 6, 3, 1, 0]})
assert report.verdict == 'counterexample'
assert not report.breaking
assert report.witness['C'] == ['13', '6', '3', '1', '0']
assert len({str(d) for d in report.witness['alternatives'].values()}) > 1
assert verify.exit_code([report]) == 0

for name in ['smoothness', 'curve-identities', 'path-independence']:
    assert verify.run_check(name, {'trials': 20}).passed

# Several checks in a process pool come back in order
reports = verify.run_checks(['smoothness', 't-cover', 'beta-rho'], genus2, subprocesses=2)
assert [r.name for r in reports] == ['smoothness', 't-cover', 'beta-rho']
assert all(r.passed for r in reports)
assert verify.exit_code(reports) == 0

# Only a failed proposition makes the exit code nonzero
counterexample = verify.CheckReport('psi-exchange', 'conjecture', {}, 'counterexample', {'C': ['13']})
fail = verify.CheckReport('counting', 'proposition', {}, 'fail', {'C': ['7']})
assert not counterexample.breaking
assert verify.exit_code(reports + [counterexample]) == 0
assert verify.exit_code(reports + [fail]) == 1

try:
    verify.run_check('nonsense')
except KeyError:
    pass
else:
    raise AssertionError('Should have refused an unknown check')

try:
    verify.CheckReport('counting', 'proposition', {}, 'maybe')
except ValueError:
    pass
else:
    raise AssertionError('Should have refused an unknown verdict')

try:
    verify.run_check('lemma-ordering', {'C': [8, 3, 0]})
except ValueError:
    pass
else:
    raise AssertionError('Should have refused a genus the check does not cover')
