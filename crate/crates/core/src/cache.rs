use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::geometry::{Geodesic, PolygonModel};
use crate::surface::CurveClass;
use crate::trace::{Multicurve, TraceExpression};

/// Synchronized memo table. Values are computed outside the lock, so a value
/// may be computed twice by racing callers; both results are identical.
pub(crate) struct Memo<K, V>(Mutex<HashMap<K, V>>);

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo(Mutex::new(HashMap::new()))
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn get(&self, key: &K) -> Option<V> {
        self.0.lock().expect("memo lock").get(key).cloned()
    }

    pub fn insert(&self, key: K, value: V) {
        self.0.lock().expect("memo lock").insert(key, value);
    }

    pub fn get_or_try<F: FnOnce() -> Result<V>>(&self, key: &K, f: F) -> Result<V> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = f()?;
        self.insert(key.clone(), v.clone());
        Ok(v)
    }
}

#[derive(Default)]
pub(crate) struct Cache {
    pub model: OnceLock<Result<Arc<PolygonModel>>>,
    pub geodesics: Memo<CurveClass, Arc<Geodesic>>,
    pub intersections: Memo<(CurveClass, CurveClass), u64>,
    pub self_intersections: Memo<CurveClass, u64>,
    pub classes: Memo<usize, Arc<Vec<CurveClass>>>,
    pub simple_classes: Memo<usize, Arc<Vec<CurveClass>>>,
    pub expansions: Memo<CurveClass, TraceExpression>,
    pub products: Memo<(Multicurve, Multicurve), TraceExpression>,
}
