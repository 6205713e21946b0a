
def step_75(cfg):
    v0_s75 = []
    for v1_s75 in range(len(v2_s75)):
        if v3_s75(v2_s75[v1_s75]):
            v0_s75 = v0_s75 + [v2_s75[v1_s75]]
    return cfg

def step_306(cfg):
    v0_s306 = []
    for v1_s306 in range(len(v2_s306)):
        if v3_s306(v2_s306[v1_s306]):
            v0_s306 = v0_s306 + [v2_s306[v1_s306]]
    return cfg

def step_537(cfg):
    v0_s537 = []
    for v1_s537 in range(len(v2_s537)):
        if v3_s537(v2_s537[v1_s537]):
            v0_s537 = v0_s537 + [v2_s537[v1_s537]]
    return cfg

def step_768(cfg):
    v0_s768 = []
    for v1_s768 in range(len(v2_s768)):
        if v3_s768(v2_s768[v1_s768]):
            v0_s768 = v0_s768 + [v2_s768[v1_s768]]
    return cfg

def step_88(cfg):
    v0_s88 = []
    for v1_s88 in range(len(v2_s88)):
        v3_s88 = v2_s88[v1_s88]
        if v4_s88(v3_s88):
            v0_s88.append(v3_s88)
    return cfg

def step_319(cfg):
    v0_s319 = []
    for v1_s319 in range(len(v2_s319)):
        v3_s319 = v2_s319[v1_s319]
        if v4_s319(v3_s319):
            v0_s319.append(v3_s319)
    return cfg

def step_550(cfg):
    v0_s550 = []
    for v1_s550 in range(len(v2_s550)):
        v3_s550 = v2_s550[v1_s550]
        if v4_s550(v3_s550):
            v0_s550.append(v3_s550)
    return cfg

def step_781(cfg):
    v0_s781 = []
    for v1_s781 in range(len(v2_s781)):
        v3_s781 = v2_s781[v1_s781]
        if v4_s781(v3_s781):
            v0_s781.append(v3_s781)
    return cfg

def step_101(cfg):
    v0_s101 = []
    for v1_s101 in range(len(v2_s101)):
        if v3_s101(v2_s101[v1_s101]):
            v0_s101 += [v2_s101[v1_s101]]
    return cfg

def step_332(cfg):
    v0_s332 = []
    for v1_s332 in range(len(v2_s332)):
        if v3_s332(v2_s332[v1_s332]):
            v0_s332 += [v2_s332[v1_s332]]
    return cfg

def step_563(cfg):
    v0_s563 = []
    for v1_s563 in range(len(v2_s563)):
        if v3_s563(v2_s563[v1_s563]):
            v0_s563 += [v2_s563[v1_s563]]
    return cfg

def step_794(cfg):
    v0_s794 = []
    for v1_s794 in range(len(v2_s794)):
        if v3_s794(v2_s794[v1_s794]):
            v0_s794 += [v2_s794[v1_s794]]
    return cfg
