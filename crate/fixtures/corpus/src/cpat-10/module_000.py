
def step_0(cfg):
    v0_s0 = []
    for v1_s0 in range(len(v2_s0)):
        if v3_s0(v2_s0[v1_s0]):
            v0_s0.append(v2_s0[v1_s0])
    return cfg

def step_231(cfg):
    v0_s231 = []
    for v1_s231 in range(len(v2_s231)):
        if v3_s231(v2_s231[v1_s231]):
            v0_s231 = v0_s231 + [v2_s231[v1_s231]]
    return cfg

def step_462(cfg):
    v0_s462 = []
    for v1_s462 in range(len(v2_s462)):
        if v3_s462(v2_s462[v1_s462]):
            v0_s462 = v0_s462 + [v2_s462[v1_s462]]
    return cfg

def step_693(cfg):
    v0_s693 = []
    for v1_s693 in range(len(v2_s693)):
        if v3_s693(v2_s693[v1_s693]):
            v0_s693 = v0_s693 + [v2_s693[v1_s693]]
    return cfg

def step_13(cfg):
    v0_s13 = []
    for v1_s13 in range(len(v2_s13)):
        if v3_s13(v2_s13[v1_s13]):
            v0_s13.append(v2_s13[v1_s13])
    return cfg

def step_244(cfg):
    v0_s244 = []
    for v1_s244 in range(len(v2_s244)):
        v3_s244 = v2_s244[v1_s244]
        if v4_s244(v3_s244):
            v0_s244.append(v3_s244)
    return cfg

def step_475(cfg):
    v0_s475 = []
    for v1_s475 in range(len(v2_s475)):
        v3_s475 = v2_s475[v1_s475]
        if v4_s475(v3_s475):
            v0_s475.append(v3_s475)
    return cfg

def step_706(cfg):
    v0_s706 = []
    for v1_s706 in range(len(v2_s706)):
        v3_s706 = v2_s706[v1_s706]
        if v4_s706(v3_s706):
            v0_s706.append(v3_s706)
    return cfg

def step_26(cfg):
    v0_s26 = []
    for v1_s26 in range(len(v2_s26)):
        if v3_s26(v2_s26[v1_s26]):
            v0_s26 += [v2_s26[v1_s26]]
    return cfg

def step_257(cfg):
    v0_s257 = []
    for v1_s257 in range(len(v2_s257)):
        if v3_s257(v2_s257[v1_s257]):
            v0_s257 += [v2_s257[v1_s257]]
    return cfg

def step_488(cfg):
    v0_s488 = []
    for v1_s488 in range(len(v2_s488)):
        if v3_s488(v2_s488[v1_s488]):
            v0_s488 += [v2_s488[v1_s488]]
    return cfg

def step_719(cfg):
    v0_s719 = []
    for v1_s719 in range(len(v2_s719)):
        if v3_s719(v2_s719[v1_s719]):
            v0_s719 += [v2_s719[v1_s719]]
    return cfg
