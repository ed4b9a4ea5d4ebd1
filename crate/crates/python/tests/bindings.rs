use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<R>(f: impl FnOnce(Python<'_>, &Bound<'_, PyModule>) -> PyResult<R>) -> R {
    Python::attach(|py| {
        let m = pyo3::wrap_pymodule!(pydahalab::pydahalab)(py);
        f(py, m.bind(py).cast::<PyModule>().unwrap()).unwrap()
    })
}

#[test]
fn scalars_and_reports() {
    with_module(|py, m| {
        let g = PyDict::new(py);
        g.set_item("d", m)?;
        let code = c"
q, t = d.QT.q(), d.QT.t()
ok = str((q * t) / t) == str(q)
s = d.r_matrix_check(2)
ok = ok and s['passes'] == s['cases'] == 2
a = d.QuadraticAlgebra('reflection_F', 2)
ok = ok and a.hilbert_series(3) == [1, 4, 10, 20]
";
        py.run(code, Some(&g), None)?;
        assert!(g.get_item("ok")?.unwrap().extract::<bool>()?);
        Ok(())
    });
}

#[test]
fn cm_point_roundtrip() {
    with_module(|py, m| {
        let g = PyDict::new(py);
        g.set_item("d", m)?;
        let code = c"
p = d.CMPoint.from_pair(['2', '3'], ['1', '4'], '5')
ok = p.moment_plus_is_zero() and d.CMPoint.from_json(p.to_json()).normal_form() == (['2', '3'], ['1', '4'])
try:
    d.CMPoint.from_pair(['1'], ['1', '2'], '5')
    ok = False
except ValueError:
    pass
";
        py.run(code, Some(&g), None)?;
        assert!(g.get_item("ok")?.unwrap().extract::<bool>()?);
        Ok(())
    });
}
