use std::time::Instant;
fn main() {
    let t0 = Instant::now();
    let p = msq_core::vqa::KernelPipeline::new(4).unwrap();
    println!("pipeline build: {:.2}s, amp terms={}, plan ops={}",
        t0.elapsed().as_secs_f64(), p.amp_expr().n_terms(), p.plan().op_count());
    let t1 = Instant::now();
    let x = vec![0.2, 0.51, 0.82, 1.13];
    let y = vec![-0.5, -0.23, 0.04, 0.31];
    let v = p.value(&x, &y).unwrap();
    println!("one eval: {:.3}s -> {v}", t1.elapsed().as_secs_f64());
}
