use super::{MergeState, Strategy};

pub(crate) struct TMerge;

impl Strategy for TMerge {
    fn candidate(&mut self, st: &mut MergeState, t: usize) -> Option<usize> {
        let p = st.axes[t].clone();
        for k in (0..t).rev() {
            if st.is_clifford(k) {
                continue;
            }
            if st.anticommutes(k, &p) {
                return None;
            }
            if st.axes[k].equal_up_to_sign(&p) {
                return Some(k);
            }
        }
        None
    }

    fn merged(&mut self, _st: &MergeState, _j: usize, _t: usize, _cliffordized: bool) {}
}
